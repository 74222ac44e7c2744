package com.example;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class ReportBuilder {
  private final int count;

  /**
   * Creates a new instance with every field set to a sensible default value.
   *
   * @param count the number of items the instance starts with
   */
  public ReportBuilder(int count) {
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

  /**
   * Tells whether the builder currently holds no report sections at all.
   *
   * @return true when nothing has been added to the builder yet
   */
  public boolean happyPath() {
    return computeTotal(0) == 0;
  }

  /**
   * Renders the report with the default layout and no extra sections.
   *
   * @return the rendered text of the whole report including the header
   */
  public String Render_report() {
    return "report" + computeTotal(1);
  }
}
