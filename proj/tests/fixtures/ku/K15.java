package ku;

class K15 {
  String shout(String s) {
    return new StringBuilder(s.toUpperCase()).append("!").toString();
  }
}
