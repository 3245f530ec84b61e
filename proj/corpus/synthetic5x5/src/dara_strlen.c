unsigned length(const char *s) {
  unsigned n = 0;
  if (!s[0]) return 0;
  do { n++; } while (s[n]);
  return n;
}
