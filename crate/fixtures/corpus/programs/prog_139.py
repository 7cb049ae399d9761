# fixture program 139
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
    age = 94
    print('age', age)
    last_name = 'Ivan Dragon'
    upper_name = last_name.upper()
    print('Hello,', last_name)
    email = 'dave.apple@anchor.com'
    domain = email.split('@')[1]
    print('mail to', email)
    cost = 1274.84
    print('price: $%.2f' % cost)
    cost = round(cost * 1.1, 2)
    account_balance = decimal.Decimal('9388.85')
    print('balance', account_balance)
    params = {'verbose': False, 'lr': 0.005, 'mode': 'pending', 'path': 'input/meadow_17.log'}
    print(sorted(params.keys()))
    max_iter = 100
    for step_number in range(min(max_iter, 2)):
        print(step_number)
    success = True
    success = not success
    if not success:
        print('no')
    batch_size = 512
    num_batches = 1000 // batch_size
    periods = list(range(1977, 1982))
    print(len(periods))
    now = datetime.date(2001, 10, 26)
    iso = now.isoformat()
    print(now.year)
    visited = set([])
    print(len(visited))
    regex = re.compile(r'^\s*#')
    found_match = regex.search('abc 123')
    print(regex.pattern)
    work_queue = collections.deque([4, 20, 17], maxlen=10)
    work_queue.append(5)
    work_queue = collections.deque([29], maxlen=10)
    for loop_round in range(2):
        buffer_size = 4096
        print(buffer_size)


main()
