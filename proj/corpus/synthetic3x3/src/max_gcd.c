unsigned gcd(unsigned a, unsigned b) {
  if (a == 0) return b;
  while (b != 0) {
    if (a > b) a -= b; else b -= a;
  }
  return a;
}
