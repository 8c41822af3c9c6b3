// quandlekit CLI - placeholder while the library comes up
int main() { return 0; }
