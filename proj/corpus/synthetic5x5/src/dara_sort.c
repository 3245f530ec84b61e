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
