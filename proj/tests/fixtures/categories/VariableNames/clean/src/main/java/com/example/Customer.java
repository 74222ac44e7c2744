package com.example;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class Customer {
  private final int count;

  /**
   * Creates a new instance with every field set to a sensible default value.
   *
   * @param count the number of items the instance starts with
   */
  public Customer(int count) {
    this.count = count;
  }

  /**
   * Computes the total by adding the stored count to the supplied amount.
   *
   * @param amount the extra amount to add to the stored count
   * @return the sum of the stored count and the amount
   */
  public int computeTotal(int amount) {
    int total = count + amount;
    return total;
  }

  /** Shared limit used by the fixture. */
  public static final int MAX_SIZE = 10;

  private static final long serialVersionUID = 1L;

  /**
   * Computes the scaled size for the given factor using the shared limit.
   *
   * @param scaleFactor the factor that multiplies the shared limit value
   * @return the scaled size derived from the limit and the factor
   */
  public int computeSize(int scaleFactor) {
    int scaledSize = MAX_SIZE * scaleFactor + (int) serialVersionUID;
    return scaledSize;
  }
}
