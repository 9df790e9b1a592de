namespace openbook {}
