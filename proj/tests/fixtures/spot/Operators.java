package spot;

class Operators {
  int calc(int a, int b) {
    int c = a * b + 1;
    c += a;
    c--;
    boolean same = a != b;
    return (c > 0) ? c : -c;
  }
}
