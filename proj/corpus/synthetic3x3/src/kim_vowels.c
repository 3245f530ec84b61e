int vowels(const char *s) {
  int n = 0;
  while (*s) {
    char c = *s++;
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') n++;
  }
  return n;
}
