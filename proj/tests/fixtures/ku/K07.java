package ku;

class K07 {
  enum Color { RED, GREEN }

  static final class Inner {
  }
}
