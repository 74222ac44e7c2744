class Layout {
  static int created;

  static int countCreated() {
    return created;
  }

  private int size;

  Layout(int size) {
    this.size = size;
    created++;
  }

  int getSize() {
    return size;
  }

  static class Node {}
}
