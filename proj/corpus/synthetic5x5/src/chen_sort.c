static void pass(int *a, int n) {
  if (n < 2) return;
  if (a[0] > a[1]) { int t = a[0]; a[0] = a[1]; a[1] = t; }
  pass(a + 1, n - 1);
}
void sort(int *a, int n) {
  if (n < 2) return;
  pass(a, n);
  sort(a, n - 1);
}
