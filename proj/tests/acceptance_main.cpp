#include "ordext/suite.hpp"
int main() { return ordext::suite::run_all().empty() ? 1 : 0; }
