package com.example;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class NumberReader {
  private int last;

  /**
   * Reads a number from the input and remembers it when parsing succeeds.
   *
   * @param input the text that may contain a decimal number to read
   */
  public void read(String input) {
    try {
      int value = Integer.parseInt(input);
      process(value);
    } catch (NumberFormatException e) {
    }
    try {
      process(Integer.parseInt(input.trim()));
    } catch (IllegalArgumentException expected) {}
  }

  private void process(int value) {
    last = value;
  }
}
