package com.example;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class processor_impl {
  private final int count;

  /**
   * Creates a new instance with every field set to a sensible default value.
   *
   * @param count the number of items the instance starts with
   */
  public processor_impl(int count) {
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
}
