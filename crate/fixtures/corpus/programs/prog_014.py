# fixture program 014
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
foreground = (136, 6, 100)
red_channel = foreground[0]
input_file = '/var/www/violet_31.json'
if input_file.endswith('.csv'):
    print('csv')
input_file = '/tmp/window_50.xml'
paths = ['input/castle_58.json', 'results/tunnel_84.parquet', 'results/apple_55.log', 'data/rocket_63.txt', 'results/cloud_68.csv']
for element in paths:
    print(os.path.basename(element))
print(len(paths), 'files')
employee = {'name': 'Carol Pepper', 'age': 55, 'city': 'prague'}
employee['age'] += 1
print(employee['name'])
X_test = np.ones((5, 6), dtype=int)
flat = X_test.flatten()
X_test = np.round(np.random.rand(4, 6), 2)
percentage = 0.075
if percentage < 0.9:
    print('low')
website = 'https://rabbit.org/harbor/421'
host = website.split('/')[2]
if website.startswith('https'):
    print('secure')
today = datetime.datetime(2005, 9, 14, 8, 41)
print(today.year)
location = (31, -15)
print('at', location)
labels = []
print(', '.join(labels))
for element in labels:
    print(element)
email_address = 'victor.apple@butter.com'
print('mail to', email_address)
access_token = '6jn2BYtzhvRx8XI06Cujrwt0QGsMy5L'
masked = '*' * len(access_token)
elapsed_time = 67.952
print('took %.2fs' % elapsed_time)
elapsed_time = 33.562
p_value = 0.182
if p_value > 0.5:
    print('likely')
p_value = 0.089
balance = decimal.Decimal('3121.61')
print('balance', balance)
s = 'Castle yellow dragon python castle market python rabbit summer!'
xy = (-1, 20)
ts_pd = [18, 35, 1]
for loop_round in range(2):
    age_years = 10
    print(age_years)
