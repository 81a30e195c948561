#include <cstdio>

int main() {
    std::puts("warplab: CLI wiring pending");
    return 0;
}
