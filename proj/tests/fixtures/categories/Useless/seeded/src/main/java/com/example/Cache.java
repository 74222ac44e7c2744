package com.example;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public class Cache {
  private final List<String> entries = new ArrayList<>();

  private int hits;

  /**
   * Stores the value in the cache after trimming surrounding whitespace.
   *
   * @param value the value that the cache should remember from now on
   */
  public void store(String value) {
    String trimmed = value.trim();
    int unused = 3;
    // entries.clear();
    entries.add(trimmed);
  }

  private String normalize(String value) {
    return value.trim();
  }
}
