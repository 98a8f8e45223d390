package ku;

class K16 {
  void start() {
    Thread t = new Thread(() -> {});
    t.start();
  }
}
