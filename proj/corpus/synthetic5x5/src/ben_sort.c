void sort(int *a, int n) {
  int *end = a + n;
  while (end > a + 1) {
    int *p = a;
    while (p + 1 < end) {
      if (p[0] > p[1]) { int t = p[0]; p[0] = p[1]; p[1] = t; }
      p++;
    }
    end--;
  }
}
