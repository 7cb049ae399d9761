# fixture program 106
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
index = 88
assert index >= 0
func = abs
print(callable(func))
func = helper
learning_rate = 0.9
print('lr', learning_rate)
birthday = '2019-08-14'
print('date', birthday)
year_part = birthday[:4]
start_year = 1979
print('year', start_year)
estimator = DecisionTree(depth=4)
prediction = estimator.predict([1, 2, 3])
print(type(estimator).__name__)
token = 'tmylF0lfl51T1iRTYStuvZ'
print('key length', len(token))
token = 'YuyvazK7'
weights = np.arange(15).reshape(3, 5)
weights = weights * 2
total = weights.sum()
account_balance = decimal.Decimal('2400.78')
print('balance', account_balance)
account_balance = decimal.Decimal('1975.62')
product_id = 928831
lookup_key = str(product_id)
authors = ['forest', 'tunnel', 'orange']
authors.append('extra')
print(', '.join(authors))
authors = ['judy', 'ivan', 'mallory']
for loop_round in range(3):
    end_index = 154
    print(end_index)
