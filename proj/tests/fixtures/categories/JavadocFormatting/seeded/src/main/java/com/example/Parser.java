package com.example;

import java.io.IOException;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class Parser {
  private int position;

  /**
   * Parses the next value from the input and advances the stored position.
   *
   * @param b
   * @param b the duplicated tag that names no parameter at all
   */
  public int parse(int a) throws IOException {
    position += a;
    return position;
  }

  /**
   * Reads the current position of the parser within the input text.
   *
   * @param offset the offset that is added to the stored position
   */
  public int readPosition(int offset) {
    return position + offset;
  }
}
