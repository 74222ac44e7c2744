package com.example;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class Square extends Base implements Shape {
  /**
   * Performs the operation and reports the outcome back to the calling code.
   */
  public void work() {
    System.out.println("square");
  }

  /**
   * Computes the area of the square from the fixed side length of two.
   *
   * @return the area of the square which is always exactly four
   */
  public double computeArea() {
    return 4.0;
  }

  /**
   * Describes the square with a short label that includes the class name.
   *
   * @return the label that describes this square for debugging output
   */
  public String toString() {
    return "Square";
  }
}
