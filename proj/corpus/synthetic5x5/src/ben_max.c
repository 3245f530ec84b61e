int max(const int *a, int n) {
  const int *end = a + n;
  int m = *a++;
  while (a != end) {
    if (*a > m) m = *a;
    a++;
  }
  return m;
}
