#include <cstdio>

int main() {
  std::puts("turmite: subcommands not wired up yet");
  return 2;
}
