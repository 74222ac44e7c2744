package com.example;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class Utils {
  /**
   * Performs the operation and reports the outcome back to the calling code.
   */
  public static void doWork() {
    System.out.println("work");
  }
}
