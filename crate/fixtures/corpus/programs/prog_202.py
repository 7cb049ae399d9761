# fixture program 202
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
    start_date_obj = datetime.datetime(2012, 10, 10, 7, 1)
    print(start_date_obj.year)
    history = collections.deque([123, 134, 126, 106, 135, 138], maxlen=10)
    print(len(history))
    row_count = 5
    assert row_count >= 0
    allowed_words = frozenset(['report', 'signal', 'island'])
    print(len(allowed_words))
    longitude = 143.258
    print('measured', longitude)
    rounded = round(longitude, 1)
    parent = None
    if parent is None:
        print('empty')
    parent = None
    raw_bytes = 'Rabbit summer harbor market rocket.'.encode()
    print(len(raw_bytes))
    email_pattern = re.compile(r'\d+')
    found_match = email_pattern.search('abc 123')
    k = 199
    s = 'Forest jungle matrix silver window!'
    for loop_round in range(4):
        user_age = 84
        print(user_age)


main()
