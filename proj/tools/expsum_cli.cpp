#include <cstdio>

int main() {
    std::puts("expsum: subcommands not wired up yet");
    return 2;
}
