package ku;

class K03 {
  int[][] grid = new int[3][3];
  int[] row = new int[4];
}
