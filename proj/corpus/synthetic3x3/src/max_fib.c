unsigned fib(unsigned n) {
  unsigned a = 0, b = 1;
  if (n == 0) return 0;
  do { unsigned t = a + b; a = b; b = t; } while (--n);
  return a;
}
