int f(int X1, int X2) {
  while (X2 > X1) { X2 = X1 * X1; }
  return X2;
}
