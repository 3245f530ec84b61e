static int is_end(char c) { return c == 0; }
static int inc(int i) { return i + 1; }
int length(const char *s) {
  int i = 0;
  while (!is_end(s[i])) i = inc(i);
  return i;
}
