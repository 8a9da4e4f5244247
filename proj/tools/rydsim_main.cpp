// Placeholder main; the full CLI is wired once the pipeline layer exists.
int main() { return 0; }
