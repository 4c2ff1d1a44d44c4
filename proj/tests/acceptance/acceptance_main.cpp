#include <iostream>

#include "criteria.hpp"

int main() { return momo::acceptance::run_all(std::cout) ? 0 : 1; }
