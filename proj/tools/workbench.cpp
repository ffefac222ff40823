#include <iostream>
#include <string>
#include <vector>

#include "grw/cli.hpp"

int main(int argc, char** argv)
{
  return grw::run(std::vector<std::string>(argv + 1, argv + argc), std::cout);
}
