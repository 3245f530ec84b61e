#!/usr/bin/env python3
# Copyright 2026 The asmsim Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the synthetic corpora under corpus/.

Each program is one application written in one programmer's style. Sources
are compiled to ARM Thumb assembly once; the .s files are committed so the
tests never need a cross-compiler.

    python3 corpus/generate.py [--cc clang]
"""
import argparse
import json
import pathlib
import subprocess

HERE = pathlib.Path(__file__).resolve().parent

# Programmer styles:
#   ana   - indexed for loops, plain ints
#   ben   - pointers and while loops
#   chen  - recursion wherever it fits
#   dara  - do/while, unsigned arithmetic, early exits
#   eli   - many small static helpers
PROGRAMS_5X5 = {
    ("sum", "ana"): """
int sum(const int *a, int n) {
  int s = 0;
  for (int i = 0; i < n; i++) s += a[i];
  return s;
}
""",
    ("sum", "ben"): """
int sum(const int *a, int n) {
  const int *end = a + n;
  int s = 0;
  while (a != end) s += *a++;
  return s;
}
""",
    ("sum", "chen"): """
int sum(const int *a, int n) {
  if (n == 0) return 0;
  return a[0] + sum(a + 1, n - 1);
}
""",
    ("sum", "dara"): """
unsigned sum(const unsigned *a, unsigned n) {
  unsigned s = 0, i = 0;
  if (n == 0) return 0;
  do { s += a[i]; } while (++i < n);
  return s;
}
""",
    ("sum", "eli"): """
static int add(int x, int y) { return x + y; }
static int at(const int *a, int i) { return a[i]; }
int sum(const int *a, int n) {
  int s = 0;
  for (int i = 0; i < n; i++) s = add(s, at(a, i));
  return s;
}
""",
    ("max", "ana"): """
int max(const int *a, int n) {
  int m = a[0];
  for (int i = 1; i < n; i++)
    if (a[i] > m) m = a[i];
  return m;
}
""",
    ("max", "ben"): """
int max(const int *a, int n) {
  const int *end = a + n;
  int m = *a++;
  while (a != end) {
    if (*a > m) m = *a;
    a++;
  }
  return m;
}
""",
    ("max", "chen"): """
int max(const int *a, int n) {
  if (n == 1) return a[0];
  int rest = max(a + 1, n - 1);
  return a[0] > rest ? a[0] : rest;
}
""",
    ("max", "dara"): """
unsigned max(const unsigned *a, unsigned n) {
  unsigned m = 0, i = 0;
  if (n == 0) return 0;
  do { if (a[i] > m) m = a[i]; } while (++i < n);
  return m;
}
""",
    ("max", "eli"): """
static int bigger(int x, int y) { return x > y ? x : y; }
static int at(const int *a, int i) { return a[i]; }
int max(const int *a, int n) {
  int m = at(a, 0);
  for (int i = 1; i < n; i++) m = bigger(m, at(a, i));
  return m;
}
""",
    ("factorial", "ana"): """
int factorial(int n) {
  int f = 1;
  for (int i = 2; i <= n; i++) f *= i;
  return f;
}
""",
    ("factorial", "ben"): """
int factorial(int n) {
  int f = 1;
  while (n > 1) f *= n--;
  return f;
}
""",
    ("factorial", "chen"): """
int factorial(int n) {
  if (n <= 1) return 1;
  return n * factorial(n - 1);
}
""",
    ("factorial", "dara"): """
unsigned factorial(unsigned n) {
  unsigned f = 1;
  if (n < 2) return 1;
  do { f *= n; } while (--n > 1);
  return f;
}
""",
    ("factorial", "eli"): """
static int mul(int x, int y) { return x * y; }
static int next(int i) { return i + 1; }
int factorial(int n) {
  int f = 1;
  for (int i = 2; i <= n; i = next(i)) f = mul(f, i);
  return f;
}
""",
    ("strlen", "ana"): """
int length(const char *s) {
  int i;
  for (i = 0; s[i] != 0; i++) {}
  return i;
}
""",
    ("strlen", "ben"): """
int length(const char *s) {
  const char *p = s;
  while (*p) p++;
  return p - s;
}
""",
    ("strlen", "chen"): """
int length(const char *s) {
  if (*s == 0) return 0;
  return 1 + length(s + 1);
}
""",
    ("strlen", "dara"): """
unsigned length(const char *s) {
  unsigned n = 0;
  if (!s[0]) return 0;
  do { n++; } while (s[n]);
  return n;
}
""",
    ("strlen", "eli"): """
static int is_end(char c) { return c == 0; }
static int inc(int i) { return i + 1; }
int length(const char *s) {
  int i = 0;
  while (!is_end(s[i])) i = inc(i);
  return i;
}
""",
    ("sort", "ana"): """
void sort(int *a, int n) {
  for (int i = 0; i < n - 1; i++)
    for (int j = 0; j < n - 1 - i; j++)
      if (a[j] > a[j + 1]) {
        int t = a[j];
        a[j] = a[j + 1];
        a[j + 1] = t;
      }
}
""",
    ("sort", "ben"): """
void sort(int *a, int n) {
  int *end = a + n;
  while (end > a + 1) {
    int *p = a;
    while (p + 1 < end) {
      if (p[0] > p[1]) { int t = p[0]; p[0] = p[1]; p[1] = t; }
      p++;
    }
    end--;
  }
}
""",
    ("sort", "chen"): """
static void pass(int *a, int n) {
  if (n < 2) return;
  if (a[0] > a[1]) { int t = a[0]; a[0] = a[1]; a[1] = t; }
  pass(a + 1, n - 1);
}
void sort(int *a, int n) {
  if (n < 2) return;
  pass(a, n);
  sort(a, n - 1);
}
""",
    ("sort", "dara"): """
void sort(unsigned *a, unsigned n) {
  unsigned swapped;
  if (n < 2) return;
  do {
    unsigned i = 1;
    swapped = 0;
    do {
      if (a[i - 1] > a[i]) { unsigned t = a[i]; a[i] = a[i - 1]; a[i - 1] = t; swapped = 1; }
    } while (++i < n);
  } while (swapped);
}
""",
    ("sort", "eli"): """
static void swap(int *x, int *y) { int t = *x; *x = *y; *y = t; }
static int out_of_order(const int *a, int j) { return a[j] > a[j + 1]; }
void sort(int *a, int n) {
  for (int i = 0; i < n - 1; i++)
    for (int j = 0; j < n - 1 - i; j++)
      if (out_of_order(a, j)) swap(&a[j], &a[j + 1]);
}
""",
}

# Three experienced programmers, three applications.
PROGRAMS_3X3 = {
    ("gcd", "kim"): """
int gcd(int a, int b) {
  while (b != 0) {
    int t = a % b;
    a = b;
    b = t;
  }
  return a;
}
""",
    ("gcd", "lou"): """
int gcd(int a, int b) {
  return b == 0 ? a : gcd(b, a % b);
}
""",
    ("gcd", "max"): """
unsigned gcd(unsigned a, unsigned b) {
  if (a == 0) return b;
  while (b != 0) {
    if (a > b) a -= b; else b -= a;
  }
  return a;
}
""",
    ("fib", "kim"): """
int fib(int n) {
  int a = 0, b = 1;
  while (n-- > 0) {
    int t = a + b;
    a = b;
    b = t;
  }
  return a;
}
""",
    ("fib", "lou"): """
int fib(int n) {
  return n < 2 ? n : fib(n - 1) + fib(n - 2);
}
""",
    ("fib", "max"): """
unsigned fib(unsigned n) {
  unsigned a = 0, b = 1;
  if (n == 0) return 0;
  do { unsigned t = a + b; a = b; b = t; } while (--n);
  return a;
}
""",
    ("vowels", "kim"): """
int vowels(const char *s) {
  int n = 0;
  while (*s) {
    char c = *s++;
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') n++;
  }
  return n;
}
""",
    ("vowels", "lou"): """
static int is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}
int vowels(const char *s) {
  return *s == 0 ? 0 : is_vowel(*s) + vowels(s + 1);
}
""",
    ("vowels", "max"): """
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
""",
}

FLAGS = ["--target=arm-none-eabi", "-mthumb", "-mcpu=cortex-m3", "-O0", "-S"]


def emit(name, programs, cc):
    root = HERE / name
    (root / "src").mkdir(parents=True, exist_ok=True)
    (root / "asm").mkdir(parents=True, exist_ok=True)
    entries = []
    for (app, prog), body in programs.items():
        stem = f"{prog}_{app}"
        src = root / "src" / f"{stem}.c"
        asm = root / "asm" / f"{stem}.s"
        src.write_text(body.lstrip())
        subprocess.run([cc, *FLAGS, str(src), "-o", str(asm)], check=True)
        # Drop the toolchain ident so the listings do not depend on it.
        lines = [l for l in asm.read_text().splitlines() if ".ident" not in l]
        asm.write_text("\n".join(lines) + "\n")
        entries.append({"id": stem, "path": f"asm/{stem}.s",
                        "programmer": prog, "application": app})
    (root / "manifest.json").write_text(
        json.dumps({"programs": entries}, indent=2) + "\n")
    src_entries = [dict(e, path=f"src/{e['id']}.c") for e in entries]
    (root / "sources.json").write_text(
        json.dumps({"programs": src_entries}, indent=2) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cc", default="clang")
    args = ap.parse_args()
    emit("synthetic3x3", PROGRAMS_3X3, args.cc)
    emit("synthetic5x5", PROGRAMS_5X5, args.cc)
    (HERE / "study.json").write_text(json.dumps({"datasets": [
        {"name": "5x5", "manifest": "synthetic5x5/manifest.json"},
        {"name": "3x3", "manifest": "synthetic3x3/manifest.json"},
    ]}, indent=2) + "\n")


if __name__ == "__main__":
    main()
