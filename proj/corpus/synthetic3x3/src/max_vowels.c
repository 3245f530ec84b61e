unsigned vowels(const char *s) {
  unsigned n = 0, i = 0;
  if (!s[0]) return 0;
  do {
    switch (s[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u': n++; break;
      default: break;
    }
  } while (s[++i]);
  return n;
}
