#include <iostream>

int main() {
  std::cout << "tridec: placeholder\n";
  return 0;
}
