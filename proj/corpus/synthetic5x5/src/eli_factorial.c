static int mul(int x, int y) { return x * y; }
static int next(int i) { return i + 1; }
int factorial(int n) {
  int f = 1;
  for (int i = 2; i <= n; i = next(i)) f = mul(f, i);
  return f;
}
