package com.example;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class Base {
  /**
   * Performs the operation and reports the outcome back to the calling code.
   */
  public void work() {
    System.out.println("base");
  }
}
