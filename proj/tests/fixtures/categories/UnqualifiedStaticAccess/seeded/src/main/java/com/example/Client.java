package com.example;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class Client {
  private final Utils utilInstance = new Utils();

  /**
   * Performs the operation and reports the outcome back to the calling code.
   */
  public void run() {
    Utils.doWork();
    utilInstance.doWork();
    getUtils().doWork();
  }

  private Utils getUtils() {
    return utilInstance;
  }
}
