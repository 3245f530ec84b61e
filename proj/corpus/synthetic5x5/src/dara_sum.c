unsigned sum(const unsigned *a, unsigned n) {
  unsigned s = 0, i = 0;
  if (n == 0) return 0;
  do { s += a[i]; } while (++i < n);
  return s;
}
