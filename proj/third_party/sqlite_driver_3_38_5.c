#define SQLITE_API static
#define SQLITE_OMIT_LOAD_EXTENSION 1
#define SQLITE_THREADSAFE 1
#include "sqlite_3_38_5/sqlite3.c"

#include "sqlite_driver.h"

#define QPG_DRIVER_FUNC qpg_sqlite_driver_3_38_5
#include "sqlite_driver_impl.inc"
