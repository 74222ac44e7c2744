package com.example;

import java.util.List;
import java.util.ArrayList;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class Cache {
  // The entries are kept in insertion order for predictable output.
  private final List<String> entries = new ArrayList<>();

  /**
   * Stores the value in the cache after trimming surrounding whitespace.
   *
   * @param value the value that the cache should remember from now on
   */
  public void store(String value) {
    String trimmed = normalize(value);
    entries.add(trimmed);
  }

  private String normalize(String value) {
    return value.trim();
  }
}
