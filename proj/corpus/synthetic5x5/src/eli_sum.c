static int add(int x, int y) { return x + y; }
static int at(const int *a, int i) { return a[i]; }
int sum(const int *a, int n) {
  int s = 0;
  for (int i = 0; i < n; i++) s = add(s, at(a, i));
  return s;
}
