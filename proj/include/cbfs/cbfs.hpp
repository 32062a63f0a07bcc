#ifndef CBFS_CBFS_HPP
#define CBFS_CBFS_HPP

#include "baseline.hpp"
#include "code_set.hpp"
#include "construction.hpp"
#include "count.hpp"
#include "motzkin.hpp"
#include "oracle.hpp"
#include "size_table.hpp"
#include "word.hpp"

#endif // CBFS_CBFS_HPP
