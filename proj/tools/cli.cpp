#include "cli.hpp"
namespace bts::cli { int run(int, char**) { return 0; } }
