static int is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}
int vowels(const char *s) {
  return *s == 0 ? 0 : is_vowel(*s) + vowels(s + 1);
}
