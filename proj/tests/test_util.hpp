#pragma once

#include <gtest/gtest.h>

#include "cltet/errors.hpp"

#define EXPECT_ERRC(stmt, errc)                                      \
  do {                                                               \
    try {                                                            \
      stmt;                                                          \
      ADD_FAILURE() << "expected " << cltet::errc_name(errc);        \
    } catch (const cltet::Error& e) {                                \
      EXPECT_EQ(e.code(), errc) << e.what();                         \
    }                                                                \
  } while (0)
