#include <iostream>

int main() {
    std::cout << "mpqg\n";
    return 0;
}
