# fixture program 063
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


def main():
    sequence_items = ['first', 'second', 'third']
    row_index = 223
    print(sequence_items[row_index % 3])
    assert row_index >= 0
    sender = 'peggy.planet@river.com'
    print('mail to', sender)
    domain = sender.split('@')[1]
    list_of_numbers = [124, 103, 135, 107, 122, 132, 119, 112]
    for element in list_of_numbers:
        print(element)
    settings = {'mode': 'red'}
    print(sorted(settings.keys()))
    settings = {'batch_size': 32, 'name': 'Stockholm', 'verbose': False, 'lr': 0.0001}
    start_year = 1974
    if start_year > 2000:
        print('recent')
    line_sep = '|'
    joined = line_sep.join(['a', 'b'])
    visited = set(['apple', 'apple', 'rabbit', 'wizard', 'report', 'stone', 'tunnel'])
    print(len(visited))
    person = {'name': 'Trent', 'age': 73, 'city': 'warsaw'}
    print(person['name'])
    user_name = 'Grace Island'
    initial = user_name[0]
    best_model = None
    if best_model is None:
        print('empty')
    timeline = list(range(2011, 2018))
    print(len(timeline))
    secret = 'HV8v3xIAgDrMUBMVlOSBPsFzZxyo66'
    masked = '*' * len(secret)
    secret = 'D9ttxqA56mXDEzBSRBo'
    ts_pd = [31, 19, 13, 36, 13, 26, 30, 40, 36, 16, 30]
    for loop_round in range(4):
        counter_value = 86103
        print(counter_value)


main()
