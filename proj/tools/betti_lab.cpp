#include <iostream>

int main() {
  std::cout << "betti-lab (under construction)\n";
  return 0;
}
