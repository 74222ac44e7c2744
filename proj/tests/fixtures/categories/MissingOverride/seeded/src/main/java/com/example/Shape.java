package com.example;

/**
 * Holds the fixture state that the surrounding checks read during analysis.
 */
public interface Shape {
  /**
   * Computes the area of the shape in square units of the model space.
   *
   * @return the area of the shape as a double precision value
   */
  double computeArea();
}
