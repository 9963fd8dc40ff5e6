#include <cstdio>

int main() {
    std::puts("rewebs: placeholder");
    return 0;
}
