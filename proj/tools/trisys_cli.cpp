// placeholder until the library lands; replaced by the real CLI
int main() { return 0; }
