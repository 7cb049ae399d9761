# fixture program 116
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
    is_valid = False
    is_valid = not is_valid
    start_date_obj = datetime.datetime(2001, 3, 7, 4, 29)
    iso = start_date_obj.isoformat()
    start_date_obj = datetime.datetime(2008, 10, 18, 15, 37)
    step_range = range(1, 98)
    print(list(step_range)[:3])
    learning_rate = 0.001
    print('lr', learning_rate)
    end_date = '2004-02-11'
    print('date', end_date)
    regex = re.compile(r'[a-z]+@[a-z]+\.com')
    found_match = regex.search('abc 123')
    regex = re.compile(r'\d+')
    cache_dir = pathlib.Path('out/stone')
    target_file = cache_dir / 'out.csv'
    token = 'vDtTzhRUW5fayHKXaJ'
    print('key length', len(token))
    masked = '*' * len(token)
    employee = {'name': 'Vienna', 'age': 6, 'city': 'london'}
    employee['age'] += 1
    seen = frozenset(['yellow', 'butter', 'candle', 'window', 'wizard'])
    print(len(seen))
    print('apple' in seen)
    email = 'heidi.summer@rocket.com'
    print('mail to', email)
    email = 'judy.rocket@signal.com'
    weight = 197.865
    print('measured', weight)
    a = 8114
    s = 'Violet castle!'
    for loop_round in range(4):
        duration = 86.567
        print(duration)


main()
