static int bigger(int x, int y) { return x > y ? x : y; }
static int at(const int *a, int i) { return a[i]; }
int max(const int *a, int n) {
  int m = at(a, 0);
  for (int i = 1; i < n; i++) m = bigger(m, at(a, i));
  return m;
}
