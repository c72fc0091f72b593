# coding=utf-8

"""Commands: rank, realize, verify, enumerate and solve."""
