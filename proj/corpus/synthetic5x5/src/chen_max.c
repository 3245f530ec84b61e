int max(const int *a, int n) {
  if (n == 1) return a[0];
  int rest = max(a + 1, n - 1);
  return a[0] > rest ? a[0] : rest;
}
