class Layout {
  private int size;

  Layout(int size) {
    this.size = size;
    created++;
  }

  int getSize() {
    return size;
  }

  static int created;

  static int countCreated() {
    return created;
  }

  static class Node {}
}
