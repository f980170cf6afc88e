namespace liesc {}
