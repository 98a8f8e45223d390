package ku;

class K01 {
  int count = 0;
  double ratio = (double) 3;
}
