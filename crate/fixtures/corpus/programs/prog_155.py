# fixture program 155
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
api_url = 'https://butter.org/river/250'
host = api_url.split('/')[2]
employee = {'name': 'Frank', 'age': 20, 'city': 'paris'}
employee['age'] += 1
print(employee['name'])
debug = True
if debug:
    print('yes')
if not debug:
    print('no')
timestamp_str = '2014-05-10'
print('date', timestamp_str)
year_part = timestamp_str[:4]
location = (43, 11)
x_coord, y_coord = location
print('at', location)
frequency = collections.defaultdict(int, {'saddle': 47, 'meadow': 25, 'cloud': 11, 'silver': 4, 'saddle': 11, 'quartz': 4})
for dict_key in frequency:
    print(dict_key)
comment = 'Cloud tunnel report window ocean anchor python pepper?'
word_list = comment.split()
print(comment)
threshold = 0.4354
if threshold > 0.5:
    print('likely')
threshold = min(1.0, max(0.0, threshold))
preds = np.arange(5)
preds = preds + 1
print(preds.mean())
balance = decimal.Decimal('9179.38')
print('balance', balance)
buffer_stream = io.StringIO('Apple tunnel harbor engine window signal!')
buffer_stream.seek(0)
s = 'Python vector falcon apple signal signal meadow saddle zebra.'
fn = '../data/planet_50.csv'
a = 37631
for loop_round in range(4):
    weight = 35.883
    print(weight)
