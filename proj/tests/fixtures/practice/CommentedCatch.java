package fixtures;

class CommentedCatch {
  void parse(String input) {
    try {
      int value = Integer.parseInt(input);
      processNumber(value);
    } catch (NumberFormatException ok) {
      // Non-numeric input is expected; continue normally
    }
  }

  void processNumber(int value) {}
}
