unsigned max(const unsigned *a, unsigned n) {
  unsigned m = 0, i = 0;
  if (n == 0) return 0;
  do { if (a[i] > m) m = a[i]; } while (++i < n);
  return m;
}
