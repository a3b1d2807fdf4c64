int explosion(int X1, int X2, int X3, int X4, int X5, int X6, int X7, int X8, int X9, int X10, int X11, int X12, int X13, int X14, int X15, int X16, int X17, int X18) {
  X1 = X2 + X3;
  X2 = X3 + X4;
  X3 = X4 + X5;
  X4 = X5 + X6;
  X5 = X6 + X7;
  X6 = X7 + X8;
  X7 = X8 + X9;
  X8 = X9 + X10;
  X9 = X10 + X11;
  X10 = X11 + X12;
  X11 = X12 + X13;
  X12 = X13 + X14;
  X13 = X14 + X15;
  X14 = X15 + X16;
  X15 = X16 + X17;
  X16 = X17 + X18;
  X17 = X18 + X1;
  X18 = X1 + X2;
  X1 = X17 + X16;
  X2 = X18 + X17;
  return X18;
}
