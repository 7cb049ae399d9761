# fixture program 239
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


sequence_items = ['first', 'second', 'third']
total_price = 1572.91
tax = total_price * 0.19
numbers_range = range(2, 48)
print(list(numbers_range)[:3])
allowed_words = frozenset(['summer', 'zebra'])
print(len(allowed_words))
history = collections.deque([133, 136, 133, 103, 126, 134, 116, 110, 104, 110, 123, 100], maxlen=10)
history.append(5)
print(len(history))
filename = '../data/planet_71.log'
if filename.endswith('.csv'):
    print('csv')
extension = os.path.splitext(filename)[1]
func = lambda x: x + 1
output = func(4)
print(callable(func))
func = lambda x: x + 1
unique_ids = {47, 360, 300, 127}
unique_ids.add(7)
date_string = '2008-11-07'
year_part = date_string[:4]
payload = 'Orange silver wizard.'.encode()
decoded = payload.decode()
payload = 'Cloud matrix vector pepper rocket bridge island vector falcon!'.encode()
tmp = 'Violet number rocket ladder vector apple island violet jungle.'
for loop_round in range(2):
    row_count = 188
    print(row_count)
