package com.example;

public class OrderManager {
  /** Order states. */
  public enum State {
    OPEN,
    CLOSED
  }

  private State state = State.OPEN;

  /**
   * Reads the current state of the order held by this manager instance.
   *
   * @return the state of the order that the manager currently holds
   */
  public State getState() {
    return state;
  }
}
