static void swap(int *x, int *y) { int t = *x; *x = *y; *y = t; }
static int out_of_order(const int *a, int j) { return a[j] > a[j + 1]; }
void sort(int *a, int n) {
  for (int i = 0; i < n - 1; i++)
    for (int j = 0; j < n - 1 - i; j++)
      if (out_of_order(a, j)) swap(&a[j], &a[j + 1]);
}
