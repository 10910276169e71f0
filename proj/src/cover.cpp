// Copyright 2026 the kpp authors
// License: Apache License 2.0
