package ku;

class K02 {
  boolean check(int a, int b) {
    if (a == b) {
      return true;
    }
    switch (a) {
      case 1:
        return false;
      default:
        return a > b;
    }
  }
}
