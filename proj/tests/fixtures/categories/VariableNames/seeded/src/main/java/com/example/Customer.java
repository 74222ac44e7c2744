package com.example;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class Customer {
  private int Count;

  /** Shared limit used by the fixture. */
  public static final int maxSize = 10;

  /**
   * Computes the scaled size for the given factor using the shared limit.
   *
   * @param First_name the factor that multiplies the shared limit value
   * @return the scaled size derived from the limit and the factor
   */
  public int computeSize(int First_name) {
    int _tmp = maxSize * First_name + Count;
    return _tmp;
  }
}
