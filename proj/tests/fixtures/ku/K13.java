package ku;

class K13 {
  void hello() {
    System.out.println("hello");
  }
}
