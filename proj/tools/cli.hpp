#pragma once
namespace bts::cli { int run(int argc, char** argv); }
