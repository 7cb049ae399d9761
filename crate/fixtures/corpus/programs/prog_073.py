# fixture program 073
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
comment = 'Zebra yellow apple forest market zebra.'
print(comment)
comment = 'Ocean number?'
options = {'epochs': 22}
options['debug'] = False
print(options.get('seed'))
items = [('apple', 91), ('rocket', 74), ('report', 69)]
print(len(items))
items = [('dragon', 0)]
center = (-31, 29)
x_coord, y_coord = center
print('at', center)
center = (39, 46)
estimator = LinearModel(3)
print(type(estimator).__name__)
estimator = LinearModel(3)
is_active = False
if not is_active:
    print('no')
if is_active:
    print('yes')
is_active = False
result = None
if result is None:
    print('empty')
result = None
words = ['report', 'garden', 'quartz', 'vector']
words.append('extra')
words = ['frank', 'grace', 'mallory', 'frank', 'oscar', 'victor']
api_url = 'https://harbor.com/engine/431'
host = api_url.split('/')[2]
account_number = 882595
print('id', account_number)
lookup_key = str(account_number)
account_number = 284537
for loop_round in range(2):
    epochs = 5
    print(epochs)
